public class S088 extends Abstract14 {
    public void open() {
        new Abstract0();
    }

    public void close() {
        new S074();
    }

    public void start() {
        switch (event) {
            case EV1:
                try {
                    log("trace");
                } finally {
                    send("msg4");
                    if (counter > 0) {
                        send("msg5");
                        send("msg0");
                    } else {
                        send("msg0");
                    }
                }
                send("msg5");
                switch (event) {
                    case EV5:
                        if (counter > 8) {
                            new S032();
                        }
                        send("msg1");
                        break;
                    case EV0:
                        new S066();
                        break;
                }
                break;
            case EV2:
                send("msg6");
                update();
                new S077();
                break;
        }
    }

    public void stop() {
        send("msg4");
    }

    public void tick() {
        send("msg6");
        update();
        switch (event) {
            case EV5:
                send("msg6");
                break;
            case EV4:
                if (counter > 5) {
                    new S069();
                } else {
                    update();
                    if (counter > 4) {
                        send("msg6");
                        new S098();
                        new S088();
                    }
                }
                if (counter > 8) {
                    send("msg4");
                } else {
                    log("trace");
                    send("msg0");
                }
                break;
        }
    }

    public void reset() {
        log("trace");
        new S005();
        if (counter > 8) {
            if (counter > 4) {
                switch (event) {
                    case EV4:
                        new S054();
                        new S028();
                        break;
                    case EV0:
                        new S053();
                        send("msg6");
                        break;
                    case EV1:
                        send("msg6");
                        update();
                        new S015();
                        break;
                }
                new S061();
                send("msg5");
            } else {
                log("trace");
            }
            new S010();
        } else {
            send("msg5");
        }
    }

    public void pause() {
        try {
            send("msg6");
            send("msg1");
            new S072();
        } finally {
            try {
                send("msg2");
                send("msg4");
                switch (event) {
                    case EV2:
                        send("msg4");
                        new S099();
                        break;
                    case EV3:
                        send("msg4");
                        update();
                        send("msg3");
                        break;
                    case EV4:
                        new S090();
                        break;
                }
            } finally {
                try {
                    new S099();
                    send("msg2");
                    send("msg2");
                } catch (IOException e) {
                    new S077();
                } catch (TimeoutException e) {
                    new S094();
                    new S036();
                    new S026();
                }
            }
            switch (event) {
                case EV5:
                    new S056();
                    new S048();
                    new S089();
                    break;
                case EV2:
                    log("trace");
                    break;
                case EV4:
                    new S022();
                    new S063();
                    break;
            }
            if (counter > 1) {
                new Abstract2();
            } else {
                send("msg1");
                send("msg2");
                try {
                    send("msg0");
                    new S070();
                    log("trace");
                } catch (TimeoutException e) {
                    new S060();
                } finally {
                    log("trace");
                }
            }
        }
    }

    public void resume() {
        if (counter > 6) {
            send("msg5");
            send("msg0");
            if (counter > 5) {
                switch (event) {
                    case EV0:
                        log("trace");
                        send("msg5");
                        break;
                    case EV4:
                        new S064();
                        break;
                    case EV2:
                        new S018();
                        update();
                        break;
                }
                send("msg6");
                send("msg4");
            }
        }
    }

    public void load() {
        switch (event) {
            case EV5:
                try {
                    try {
                        new S076();
                        new S087();
                        new S007();
                    } catch (IllegalStateException e) {
                        send("msg0");
                    } catch (IOException e) {
                        send("msg4");
                    }
                    send("msg4");
                    new S038();
                } catch (TimeoutException e) {
                    send("msg6");
                } catch (IOException e) {
                    new S035();
                    switch (event) {
                        case EV1:
                            update();
                            new S053();
                            break;
                        case EV0:
                            new S080();
                            log("trace");
                            break;
                    }
                    send("msg6");
                } finally {
                    new S069();
                    switch (event) {
                        case EV1:
                            send("msg6");
                            new S048();
                            break;
                        case EV5:
                            update();
                            send("msg1");
                            update();
                            break;
                    }
                }
                new S054();
                new S027();
                break;
        }
        new S070();
    }

    public void save() {
        if (counter > 9) {
            new S084();
            switch (event) {
                case EV3:
                    log("trace");
                    switch (event) {
                        case EV5:
                            new S079();
                            break;
                        case EV0:
                            new S073();
                            break;
                    }
                    send("msg6");
                    break;
                case EV1:
                    log("trace");
                    new S049();
                    new S034();
                    break;
            }
            new S005();
        } else {
            new S040();
        }
        new S072();
        if (counter > 6) {
            new S005();
        } else {
            new S080();
            update();
        }
    }
}
