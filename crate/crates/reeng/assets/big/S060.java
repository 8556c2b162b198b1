public class S060 extends Abstract8 {
    public void open() {
        new S092();
        new Abstract0();
        switch (event) {
            case EV4:
                if (counter > 4) {
                    new S029();
                    log("trace");
                }
                if (counter > 8) {
                    new Abstract23();
                    send("msg3");
                    switch (event) {
                        case EV5:
                            send("msg3");
                            send("msg2");
                            new S083();
                            break;
                        case EV0:
                            log("trace");
                            send("msg3");
                            break;
                        case EV1:
                            send("msg3");
                            break;
                    }
                } else {
                    update();
                }
                break;
            case EV0:
                switch (event) {
                    case EV1:
                        send("msg0");
                        new S018();
                        if (counter > 8) {
                            new S090();
                            send("msg5");
                        }
                        break;
                }
                break;
        }
    }

    public void close() {
        log("trace");
    }

    public void start() {
        switch (event) {
            case EV0:
                send("msg3");
                break;
            case EV1:
                new Abstract6();
                if (counter > 5) {
                    switch (event) {
                        case EV1:
                            new S022();
                            break;
                        case EV0:
                            log("trace");
                            new S052();
                            log("trace");
                            break;
                        case EV3:
                            update();
                            send("msg3");
                            new Abstract2();
                            break;
                    }
                    new S090();
                    switch (event) {
                        case EV5:
                            send("msg5");
                            new S045();
                            new S050();
                            break;
                        case EV2:
                            new S059();
                            new S063();
                            send("msg7");
                            break;
                    }
                }
                switch (event) {
                    case EV2:
                        if (counter > 3) {
                            new S083();
                            new S022();
                        }
                        log("trace");
                        break;
                    case EV3:
                        if (counter > 4) {
                            new S054();
                        } else {
                            log("trace");
                            send("msg4");
                        }
                        new Abstract11();
                        if (counter > 0) {
                            send("msg4");
                            send("msg3");
                        } else {
                            new Abstract19();
                        }
                        break;
                }
                break;
            case EV3:
                update();
                break;
        }
    }

    public void stop() {
        update();
    }

    public void tick() {
        send("msg6");
    }

    public void reset() {
        send("msg7");
        try {
            log("trace");
            new S060();
        } catch (TimeoutException e) {
            send("msg7");
            new S031();
        } catch (IOException e) {
            send("msg1");
            new S021();
            try {
                new S071();
                new S065();
                new S038();
            } finally {
                try {
                    send("msg5");
                    update();
                    send("msg5");
                } catch (IllegalStateException e) {
                    new S096();
                } catch (TimeoutException e) {
                    send("msg6");
                    new S086();
                }
                log("trace");
            }
        } finally {
            send("msg3");
            try {
                update();
                log("trace");
                new S066();
            } catch (IOException e) {
                switch (event) {
                    case EV4:
                        send("msg2");
                        break;
                    case EV5:
                        new S096();
                        send("msg1");
                        break;
                    case EV2:
                        send("msg5");
                        log("trace");
                        break;
                    default:
                        new S056();
                        new S000();
                        send("msg0");
                        break;
                }
                new S086();
                switch (event) {
                    case EV3:
                        new S001();
                        new S023();
                        break;
                    default:
                        new S077();
                        update();
                        break;
                }
            } catch (TimeoutException e) {
                if (counter > 1) {
                    send("msg3");
                    send("msg5");
                } else {
                    new S096();
                    send("msg6");
                }
                send("msg6");
                try {
                    new S026();
                    send("msg1");
                    new S030();
                } finally {
                    send("msg4");
                }
            } finally {
                send("msg4");
            }
            log("trace");
        }
    }

    public void pause() {
        new S024();
        send("msg0");
    }

    public void resume() {
        send("msg0");
        if (counter > 3) {
            send("msg6");
        } else {
            send("msg0");
            new Abstract8();
        }
        send("msg7");
    }

    public void load() {
        new S050();
        new S082();
        send("msg0");
    }

    public void save() {
        if (counter > 3) {
            send("msg2");
            send("msg4");
            new S010();
        } else {
            send("msg4");
        }
        switch (event) {
            case EV1:
                update();
                break;
        }
        try {
            send("msg6");
            if (counter > 0) {
                new S047();
            } else {
                new Abstract5();
            }
            send("msg2");
        } catch (IllegalStateException e) {
            new S044();
            log("trace");
            update();
        } finally {
            switch (event) {
                case EV2:
                    send("msg6");
                    break;
            }
            new Abstract1();
            if (counter > 8) {
                send("msg3");
                if (counter > 1) {
                    update();
                    new S035();
                    new S060();
                }
            }
        }
    }
}
