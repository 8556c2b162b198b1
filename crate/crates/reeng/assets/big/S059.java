public class S059 extends State {
    public void open() {
        log("trace");
        send("msg0");
    }

    public void close() {
        log("trace");
    }

    public void start() {
        switch (event) {
            case EV3:
                new Abstract23();
                switch (event) {
                    case EV3:
                        new S094();
                        send("msg4");
                        send("msg2");
                        break;
                    case EV5:
                        send("msg0");
                        send("msg6");
                        break;
                }
                break;
            case EV2:
                send("msg2");
                switch (event) {
                    case EV0:
                        log("trace");
                        new S028();
                        log("trace");
                        break;
                    case EV1:
                        send("msg0");
                        if (counter > 8) {
                            send("msg2");
                        } else {
                            new S012();
                            log("trace");
                        }
                        break;
                    case EV3:
                        send("msg1");
                        send("msg1");
                        break;
                }
                break;
        }
        update();
        if (counter > 0) {
            try {
                send("msg6");
                update();
                log("trace");
            } finally {
                send("msg0");
                update();
                try {
                    send("msg5");
                    update();
                    new S032();
                } catch (IOException e) {
                    send("msg3");
                    send("msg4");
                    send("msg1");
                } catch (TimeoutException e) {
                    log("trace");
                    new S090();
                    send("msg6");
                }
            }
        }
    }

    public void stop() {
        new S006();
    }

    public void tick() {
        new S070();
        new S071();
        try {
            new S059();
            new S096();
        } finally {
            new S076();
            try {
                log("trace");
            } catch (IOException e) {
                if (counter > 3) {
                    send("msg5");
                }
            } catch (TimeoutException e) {
                send("msg1");
                if (counter > 1) {
                    send("msg4");
                } else {
                    send("msg2");
                }
            } finally {
                send("msg5");
                new S093();
            }
        }
    }

    public void reset() {
        try {
            new S004();
            if (counter > 9) {
                switch (event) {
                    case EV1:
                        new S096();
                        send("msg4");
                        new S079();
                        break;
                }
                switch (event) {
                    case EV3:
                        new S053();
                        update();
                        break;
                }
            }
        } catch (IllegalStateException e) {
            send("msg4");
            log("trace");
        } finally {
            new S045();
            log("trace");
            new Abstract14();
        }
    }

    public void pause() {
        switch (event) {
            case EV2:
                send("msg3");
                try {
                    try {
                        send("msg7");
                        log("trace");
                    } catch (IllegalStateException e) {
                        log("trace");
                        send("msg4");
                        send("msg5");
                    } catch (IOException e) {
                        update();
                        send("msg7");
                    }
                    switch (event) {
                        case EV4:
                            log("trace");
                            send("msg7");
                            new Abstract20();
                            break;
                    }
                    new S030();
                } catch (IllegalStateException e) {
                    send("msg5");
                    new Abstract10();
                    new S092();
                } finally {
                    new S099();
                    new S064();
                }
                if (counter > 1) {
                    try {
                        new S088();
                        update();
                        send("msg0");
                    } catch (IOException e) {
                        update();
                        send("msg1");
                        send("msg2");
                    }
                    send("msg6");
                } else {
                    update();
                    send("msg5");
                    send("msg2");
                }
                break;
        }
        update();
    }

    public void resume() {
        new S020();
        send("msg1");
        send("msg7");
    }

    public void load() {
        new S025();
        new S032();
    }

    public void save() {
        send("msg1");
        switch (event) {
            case EV5:
                send("msg1");
                try {
                    switch (event) {
                        case EV1:
                            update();
                            log("trace");
                            send("msg4");
                            break;
                        case EV3:
                            log("trace");
                            new S050();
                            new S053();
                            break;
                    }
                    update();
                } catch (IOException e) {
                    send("msg5");
                    new S041();
                } finally {
                    send("msg0");
                }
                switch (event) {
                    case EV0:
                        send("msg2");
                        log("trace");
                        break;
                    case EV3:
                        try {
                            send("msg1");
                        } finally {
                            new S012();
                            new S053();
                            new S073();
                        }
                        log("trace");
                        send("msg5");
                        break;
                }
                break;
            case EV2:
                log("trace");
                log("trace");
                send("msg4");
                break;
            case EV4:
                new S033();
                new S060();
                break;
        }
        switch (event) {
            case EV2:
                switch (event) {
                    case EV4:
                        new S071();
                        break;
                    case EV3:
                        send("msg3");
                        send("msg7");
                        break;
                    case EV0:
                        if (counter > 0) {
                            update();
                        }
                        log("trace");
                        break;
                }
                update();
                switch (event) {
                    case EV3:
                        new S028();
                        break;
                    case EV4:
                        send("msg6");
                        send("msg1");
                        new S021();
                        break;
                }
                break;
            case EV1:
                new S075();
                new S048();
                break;
            case EV3:
                new S015();
                new S070();
                new S033();
                break;
        }
    }
}
