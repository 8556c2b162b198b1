public class S018 extends Abstract19 {
    public void open() {
        switch (event) {
            case EV3:
                try {
                    try {
                        new S099();
                        new S049();
                    } finally {
                        send("msg3");
                        send("msg5");
                        send("msg5");
                    }
                } catch (TimeoutException e) {
                    switch (event) {
                        case EV2:
                            send("msg2");
                            send("msg6");
                            break;
                    }
                } finally {
                    update();
                    if (counter > 6) {
                        send("msg4");
                    } else {
                        update();
                        log("trace");
                    }
                }
                new S075();
                new Abstract13();
                break;
            case EV5:
                new S040();
                switch (event) {
                    case EV4:
                        send("msg7");
                        new S091();
                        send("msg4");
                        break;
                    case EV0:
                        update();
                        break;
                }
                break;
        }
        new S036();
        update();
    }

    public void close() {
        update();
    }

    public void start() {
        update();
    }

    public void stop() {
        try {
            new Abstract3();
        } catch (IOException e) {
            new S044();
        } finally {
            send("msg4");
            try {
                try {
                    send("msg0");
                } catch (IllegalStateException e) {
                    new S054();
                    new S044();
                    new S037();
                } catch (TimeoutException e) {
                    send("msg5");
                    update();
                }
                new S028();
                send("msg3");
            } catch (IllegalStateException e) {
                if (counter > 2) {
                    new S007();
                    new S051();
                }
                if (counter > 2) {
                    send("msg7");
                } else {
                    new S036();
                    update();
                }
            } finally {
                send("msg7");
                update();
                log("trace");
            }
            send("msg0");
        }
    }

    public void tick() {
        new Abstract7();
        send("msg0");
    }

    public void reset() {
        new Abstract7();
        switch (event) {
            case EV4:
                new Abstract5();
                send("msg1");
                break;
        }
        new S050();
    }

    public void pause() {
        update();
    }

    public void resume() {
        log("trace");
    }

    public void load() {
        new S040();
        try {
            try {
                send("msg4");
            } catch (TimeoutException e) {
                send("msg7");
                if (counter > 7) {
                    send("msg0");
                    new S095();
                } else {
                    new S064();
                    send("msg3");
                    send("msg2");
                }
                new S093();
            } catch (IllegalStateException e) {
                new Abstract21();
                try {
                    log("trace");
                    log("trace");
                    new Abstract1();
                } finally {
                    send("msg1");
                }
            } finally {
                send("msg7");
            }
        } catch (IllegalStateException e) {
            try {
                log("trace");
            } finally {
                if (counter > 4) {
                    new S091();
                }
                try {
                    new S030();
                    send("msg7");
                } catch (TimeoutException e) {
                    send("msg7");
                }
                try {
                    new S021();
                } finally {
                    new S064();
                    send("msg1");
                    new S052();
                }
            }
            send("msg1");
        }
    }

    public void save() {
        new S058();
        try {
            update();
        } catch (IOException e) {
            switch (event) {
                case EV1:
                    switch (event) {
                        case EV0:
                            log("trace");
                            break;
                        case EV4:
                            log("trace");
                            new S072();
                            break;
                    }
                    send("msg2");
                    try {
                        send("msg3");
                        new S071();
                    } catch (IOException e) {
                        new S014();
                        log("trace");
                    } finally {
                        new S023();
                        new S050();
                        new S008();
                    }
                    break;
                case EV5:
                    update();
                    break;
            }
            send("msg2");
        } catch (TimeoutException e) {
            send("msg3");
            if (counter > 0) {
                switch (event) {
                    case EV3:
                        log("trace");
                        log("trace");
                        send("msg0");
                        break;
                    case EV2:
                        update();
                        new S007();
                        break;
                }
                send("msg7");
            } else {
                new S056();
                try {
                    log("trace");
                } catch (IllegalStateException e) {
                    new S000();
                } catch (IOException e) {
                    send("msg1");
                }
            }
            new S091();
        }
        log("trace");
    }
}
